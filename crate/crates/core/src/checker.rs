//! Checker (stub).
