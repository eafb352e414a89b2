//! Acceptance battery (shared by tests and the CLI).
