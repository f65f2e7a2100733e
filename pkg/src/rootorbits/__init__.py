"""Coxeter-element orbits on real roots of affine root systems."""
