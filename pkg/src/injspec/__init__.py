"""Injective spectra of computable rings: commutative quotients, quiver
algebras, 1-critical rings, the quantum plane and the Heisenberg enveloping
algebra, plus deviation and a generic specialisation-topology engine."""

__version__ = "0.1.0"
