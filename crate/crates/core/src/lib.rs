pub mod app;
pub mod exact;
pub mod fusion;
pub mod io;
pub mod lincat;
pub mod modular;
pub mod tqft;
