"""Input formats, enumeration, records and the results store."""
