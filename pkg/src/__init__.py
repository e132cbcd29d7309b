"""SW-ABC - likelihood-free inference with Sliced-Wasserstein discrepancies."""

__version__ = "1.0.0"
