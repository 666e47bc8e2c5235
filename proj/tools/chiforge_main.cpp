#include <iostream>
int main() { std::cout << "chiforge: CLI not wired yet\n"; return 0; }
