namespace hexdn {}
