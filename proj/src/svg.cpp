namespace tri { }
