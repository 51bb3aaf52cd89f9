"""liecenter: exact verification of centers and semicenters of Borel
subalgebras of types G2, F4 and Cn over the rationals and odd prime fields.

The package is organized around the computation pipeline:

- :mod:`liecenter.exactalg` — exact coefficient fields and sparse polynomials;
- :mod:`liecenter.liealg` — structure-constant tables and the algebra catalog;
- :mod:`liecenter.poisson` — the Poisson bracket, invariance and weights;
- :mod:`liecenter.invariants` — the named invariant elements and the
  brute-force invariant-space oracle;
- :mod:`liecenter.pbw` — the enveloping algebra in normal form;
- :mod:`liecenter.charp` — p-power generator sets, Frobenius membership,
  determinant identities, theorem audits;
- :mod:`liecenter.cli` — the ``liecenter`` command.
"""

__version__ = "0.1.0"
