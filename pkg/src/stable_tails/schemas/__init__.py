"""JSON schemas for serialized reports and CLI tables."""
