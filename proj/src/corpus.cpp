namespace fourflow {}
