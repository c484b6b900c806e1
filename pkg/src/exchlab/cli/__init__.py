"""Command-line front door for ExchLab."""
