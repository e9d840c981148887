pub mod alg;
pub mod cli;
pub mod error;
pub mod forest;
pub mod lit;
pub mod maps;
pub mod perm;
pub mod poset;
pub mod subset;
pub mod tree;
pub mod verify;
