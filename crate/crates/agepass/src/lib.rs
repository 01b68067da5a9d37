//! Anonymous age-verification tokens.
//!
//! This crate implements a four-party token system for proving an age
//! attribute without identifying the holder:
//!
//! * a **client** that requests, holds, and spends tokens,
//! * an **attester** that performs a (mocked) KYC age check and vouches
//!   for token requests,
//! * an **issuer** that blind-signs token requests without ever seeing
//!   the token contents,
//! * an **origin** that serves age-restricted content and verifies and
//!   consumes tokens.
//!
//! Tokens are publicly verifiable blind-RSA signatures ([`blindsig`])
//! wrapped in fixed wire structures ([`tokens`]). The issuance protocol
//! supports batch issuance from a single attestation as well as
//! context-bound single-token issuance with a validity window. Origins
//! detect double-spending through an append-only spent-token store that
//! can be synchronized across origins ([`services`]). A public
//! trusted-list [`registry`] carries the verification keys and status of
//! every attester and issuer, and issuers can act as [`exchange`] points
//! that swap a valid token from one issuer for a fresh token of another,
//! hiding the original issuer from origins.
//!
//! The [`simharness`] module packages the privacy and abuse-resistance
//! claims as measurable scenarios: unlinkability against a colluding
//! issuer+origin adversary, cross-origin double-spend windows under
//! varying synchronization, issuer-hiding distinguishers, and token
//! transferability.
//!
//! Every runnable capability has a corresponding example under
//! `examples/`; start with `end_to_end`.
//!
//! This is a reference implementation. It is not hardened against
//! side channels, and key handling is file-based; see the README.

pub mod actors;
pub mod blindsig;
pub mod cli;
pub mod clock;
pub mod exchange;
pub mod registry;
pub mod services;
pub mod simharness;
pub mod tokens;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
