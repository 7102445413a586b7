"""Little disks, Swiss-cheese and Fulton-MacPherson operads, and an explicit
operad map from the compactified configuration spaces to little disks."""

__version__ = "0.1.0"
