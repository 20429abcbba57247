"""Crystal models: B(infinity) and B(lambda) on components, tableaux, and the bridge between them."""
