"""Mixed-radix reversible and quantum gate toolkit."""

__version__ = "0.1.0"
