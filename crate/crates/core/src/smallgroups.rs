//! Small group tables (stub).
