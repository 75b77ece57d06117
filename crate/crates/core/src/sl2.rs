//! SL2 tables (stub).
