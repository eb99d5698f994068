#![allow(dead_code)]

#[path = "../../../core/tests/support/gen.rs"]
pub mod gen;
#[path = "../../../core/tests/support/oracle.rs"]
pub mod oracle;

pub mod fixtures;
