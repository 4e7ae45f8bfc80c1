class A(B, C, metaclass=M):
    '''doc'''
    x = 1
    def m(self):
        return self.x
