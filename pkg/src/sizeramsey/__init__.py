"""Connected size Ramsey numbers of a matching versus a path or cycle."""

__version__ = "0.1.0"
