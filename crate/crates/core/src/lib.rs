pub mod cache;
pub mod checks;
pub mod cli;
pub mod exact;
pub mod grid;
pub mod padic;
pub mod report;
pub mod sequences;
