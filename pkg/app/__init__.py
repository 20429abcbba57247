"""Crystal graphs of sl_{n+1} from tableaux and from quiver varieties."""
