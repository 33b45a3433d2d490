"""Vanishing ideals of subspace arrangements and products of linear forms."""
