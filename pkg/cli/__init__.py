"""Command-line layer: config parsing, instance builders, commands and reports."""
