#![allow(dead_code)]

pub use poincare_cgc::sampling::*;
