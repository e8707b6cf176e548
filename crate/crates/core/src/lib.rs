pub mod cohomology;
pub mod error;
pub mod exactalg;
pub mod groups;
pub mod lincat;
pub mod gaction;
pub mod gfunctor;
pub mod strictify;
pub mod sod;
pub mod doc;
pub mod report;
pub mod cli;
