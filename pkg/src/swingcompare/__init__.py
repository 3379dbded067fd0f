"""Motion-comparison toolkit.

Synchronizes two motion clips (a learner's and an expert's) through
per-frame latent embeddings, flags frames of large discrepancy, aligns
and compares the 3D skeletons of matched frames, and serves the results
to an interactive viewer.
"""

__version__ = "0.1.0"
