"""Quality assurance and testing modules."""
