"""Per-n fan-out for coefficient computation."""
