//! Shared outbound-HTTP plumbing: an agent with a global timeout and a
//! retry wrapper that retries transport failures and server errors but
//! never client errors.

use std::time::Duration;

use ureq::Agent;

pub fn agent(timeout: Duration) -> Agent {
    Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into()
}

/// Runs `call` up to `1 + retries` times. 4xx responses are not retried.
pub fn with_retries<T>(
    retries: u32,
    mut call: impl FnMut() -> Result<T, ureq::Error>,
) -> Result<T, ureq::Error> {
    let mut attempt = 0;
    loop {
        match call() {
            Ok(value) => return Ok(value),
            Err(error) => {
                let client_error = matches!(&error, ureq::Error::StatusCode(code) if (400..500).contains(code));
                if client_error || attempt >= retries {
                    return Err(error);
                }
                attempt += 1;
            }
        }
    }
}
