"""
Capa física de ChirpSim.

Contiene las utilidades numéricas, las cadenas de transmisión, el canal
retardo-Doppler y el detector ML conjunto.
"""
