msg = "héllo wörld 🎉"
