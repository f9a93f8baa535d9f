"""Text, table and figure output."""
