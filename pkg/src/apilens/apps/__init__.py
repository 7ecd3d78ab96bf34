"""The to-do and filesystem demos."""
