"""Root systems, admissible sets and their orbit posets."""
