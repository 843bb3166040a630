"""Signs of sparse resultants via 2-mixed volumes and tropical geometry."""
