"""Linear algebra with matrix powering, interpreted into two-sorted bounded arithmetic.

Subpackages and modules:

* :mod:`lapinterp.bitstring` -- finite sets of naturals as bit strings, pairing, Row/seq/entry
* :mod:`lapinterp.zint` -- sign-bit binary integers over bit strings
* :mod:`lapinterp.zmatrix` -- matrix encodings and powering over Z2 and Z
* :mod:`lapinterp.twosorted` -- two-sorted formulas, classification and standard-model evaluation
* :mod:`lapinterp.lap` -- the three-sorted theory LAp: parser, evaluator, axioms, proof checker
* :mod:`lapinterp.interp` -- translations of LAp into the two-sorted theories
* :mod:`lapinterp.linalg` -- Berkowitz characteristic polynomial, determinant and principle checks
* :mod:`lapinterp.cnf` -- propositional encodings of the hard matrix identities
"""

__version__ = "0.1.0"
