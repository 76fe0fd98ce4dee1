//! Deployable surface for the polyguard moderation library: configuration,
//! remote HTTP backends, the concurrent moderation service, judge fan-out
//! for jury mode, append-only run persistence, and the CLI.

pub mod backends;
pub mod cli;
pub mod config;
pub mod http;
pub mod judges;
pub mod service;
pub mod store;
