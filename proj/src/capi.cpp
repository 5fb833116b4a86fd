namespace affschur {}
