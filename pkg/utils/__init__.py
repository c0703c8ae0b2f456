# Numerical library and managers for specint
