pub mod rmt;
