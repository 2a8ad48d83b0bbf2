"""Lawful traversals: applicatives, traversable functors, finitary
containers and a bounded-exhaustive law checker."""

__version__ = "0.1.0"
