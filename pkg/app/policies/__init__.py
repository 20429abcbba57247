"""Policy modules (genericity sampling)."""
