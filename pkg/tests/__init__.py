"""Test package for arbitrage bot."""
