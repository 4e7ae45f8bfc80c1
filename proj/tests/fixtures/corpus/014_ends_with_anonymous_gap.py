foo(  )
  
