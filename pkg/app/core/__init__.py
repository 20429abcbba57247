"""Core exact algebra: linear algebra, Cartan data, quivers, representation points, the component cache."""
