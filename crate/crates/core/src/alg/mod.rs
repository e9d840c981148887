pub mod ck;
pub mod kernel;
pub mod lincomb;
pub mod lr;
pub mod morphism;
pub mod nck;
pub mod nsym;
pub mod qsym;
pub mod ssym;
pub mod sym;
pub mod ysym;
