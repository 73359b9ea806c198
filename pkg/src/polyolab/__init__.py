"""polyolab: exact enumeration and character calculus for parallelogram
polyominoes, their labelled variants, and the associated operator theory."""

__version__ = "0.1.0"
