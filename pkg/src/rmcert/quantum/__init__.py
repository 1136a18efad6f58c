"""Quantum group engine: representations, twists, intertwiners and semiclassical limits."""
