pub mod apps;
pub mod che;
pub mod heun;
pub mod nu;
pub mod oracle;
pub mod poly;
pub mod state;
