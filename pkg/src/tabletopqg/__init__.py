"""Numerical laboratory for tabletop quantum-gravity experiments.

Subpackages cover finite-dimensional quantum mechanics (quantumcore),
the gravcat entanglement experiment under rival gravity models (gie),
the classical-mediator no-go theorem (nogo), the Alice/Bob quadrupole
thought experiment (gedanken), the historical neutron-interferometry and
quantum-Cavendish experiments (precursors), the BEC non-Gaussianity
experiment (ging), and the geometrized-Newtonian phase analysis
(newtoncartan).  The cli module ties them together behind a single
command-line entry point.
"""

__version__ = "0.1.0"
