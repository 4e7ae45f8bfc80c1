foo()