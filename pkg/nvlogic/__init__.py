"""nvlogic: many-valued logic engine, from Boolean up to refined neutrosophic tuples."""

__version__ = "0.1.0"
