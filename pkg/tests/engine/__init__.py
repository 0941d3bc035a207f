# Tests para el módulo engine
