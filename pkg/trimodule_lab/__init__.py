"""
Trimodule Lab.

Exact finite-dimensional checks for:
- bialgebras, antipodes and twisted antipodes
- comodules, bicomodules and cotensor products
- Hopf trimodules, the interchange morphism and the structure theorem
- trimodule algebras, their modules, cohoms and contramodules
- the module monad A□−, Linton coequalizers and fusion operators
"""

__version__ = "1.0.0"
__description__ = "Exact laboratory for Hopf trimodules and trimodule algebras"
