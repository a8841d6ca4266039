//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors produced by kernel evaluation and verification routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    Domain(String),
    /// Invalid configuration (grid resolution, CFL violation, empty grids).
    Config(String),
    /// A numerical method failed to converge or two methods disagreed.
    Eval(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Eval(msg) => write!(f, "evaluation error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! domain_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Domain(alloc::format!($($arg)*))
    };
}
macro_rules! config_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Config(alloc::format!($($arg)*))
    };
}
macro_rules! eval_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Eval(alloc::format!($($arg)*))
    };
}

pub(crate) use {config_err, domain_err, eval_err};
