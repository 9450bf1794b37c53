"""
Curriculum GAN
Difficulty-based curriculum learning strategies for GAN training on desk-scale synthetic data.
"""

__version__ = "0.1.0"
