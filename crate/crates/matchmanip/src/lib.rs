pub mod experiments;
pub mod formats;
