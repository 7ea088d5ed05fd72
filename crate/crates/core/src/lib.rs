pub mod bracket;
pub mod brt;
pub mod circles;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod poly;
pub mod ribbon;
pub mod state_graph;
pub mod verify;
