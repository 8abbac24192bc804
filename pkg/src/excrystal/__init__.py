"""Crystal graphs of types E6 and E7 and Kirillov-Reshetikhin crystals built by promotion."""

__version__ = "0.1.0"
