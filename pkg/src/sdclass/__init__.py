"""Binary self-dual code classification."""
