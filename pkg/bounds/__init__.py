# closed-form bounds and their exact brute-force counterparts
