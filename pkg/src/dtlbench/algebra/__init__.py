"""Scalars, connectors and Brauer diagrams of types A and D, and the DTL presentations."""
