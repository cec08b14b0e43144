"""Closed-form backends for 1-critical rings, the quantum plane and the Heisenberg enveloping algebra."""
