"""bracekit: finite left braces, their low-degree cohomology, extensions and the Wells sequence."""

__version__ = "1.0.0"
