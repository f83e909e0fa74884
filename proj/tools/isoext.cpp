#include <cstdio>
int main() { std::puts("isoext: placeholder"); return 0; }
