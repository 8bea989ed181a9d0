"""Core infrastructure: logging and error handling."""
