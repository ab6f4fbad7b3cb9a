namespace ccx {}
