pub mod set_oracle;
