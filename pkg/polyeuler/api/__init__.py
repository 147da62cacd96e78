"""HTTP blueprints for the Functions host."""
